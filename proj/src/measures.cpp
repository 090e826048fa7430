#include "renyi/measures.hpp"

#include "renyi/rng.hpp"

namespace renyi {

namespace {

EstimatorParams with_seed(const EstimatorParams& params, const char* term) {
    EstimatorParams p = params;
    p.seed = derive_key(params.seed, hash_name(term));
    return p;
}

NormalizedKernel joint_kernel(const VariableSet& vars) {
    if (vars.empty()) fail(errc::invalid_argument, "empty variable set");
    if (vars.size() == 1) return vars.front();
    return hadamard_joint(vars);
}

} // namespace

EntropyEstimate joint_entropy(const VariableSet& vars, const EstimatorParams& params) {
    return estimate(joint_kernel(vars).matrix(), params);
}

double conditional_entropy(const VariableSet& vars, const NormalizedKernel& given,
                           const EstimatorParams& params) {
    const NormalizedKernel vars_joint = joint_kernel(vars);
    const NormalizedKernel all = hadamard_joint({&vars_joint, &given});
    const double s_all = estimate(all.matrix(), with_seed(params, "term:joint")).entropy;
    const double s_given = estimate(given.matrix(), with_seed(params, "term:given")).entropy;
    return s_all - s_given;
}

MutualInformation mutual_information(const VariableSet& vars, const NormalizedKernel& target,
                                     const EstimatorParams& params) {
    const NormalizedKernel vars_joint = joint_kernel(vars);
    const NormalizedKernel all = hadamard_joint({&vars_joint, &target});
    MutualInformation mi;
    mi.vars_entropy = estimate(vars_joint.matrix(), with_seed(params, "term:vars")).entropy;
    mi.target_entropy = estimate(target.matrix(), with_seed(params, "term:target")).entropy;
    mi.joint_entropy = estimate(all.matrix(), with_seed(params, "term:joint")).entropy;
    mi.value = mi.vars_entropy + mi.target_entropy - mi.joint_entropy;
    return mi;
}

} // namespace renyi
