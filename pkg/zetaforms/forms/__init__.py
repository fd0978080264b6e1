from zetaforms.forms.linear_forms import (
    FormSet,
    HurwitzLinearForm,
    IntegralityCertificate,
    ZetaLinearForm,
    build_forms,
    certify_integrality,
    d2_special_form,
    extract_form,
    reduce_to_zeta,
)
from zetaforms.forms.partial_fractions import (
    PartialFractionTable,
    column_sums,
    decompose,
    parity_profile,
    reconstruct_eval,
    reflection_holds,
)
from zetaforms.forms.rational_function import (
    Params,
    RationalFunctionRep,
    build_R,
    check_symmetry,
    eval_R_exact,
    eval_R_float,
    zero_points,
)

__all__ = [
    "FormSet",
    "HurwitzLinearForm",
    "IntegralityCertificate",
    "Params",
    "PartialFractionTable",
    "RationalFunctionRep",
    "ZetaLinearForm",
    "build_R",
    "build_forms",
    "certify_integrality",
    "check_symmetry",
    "column_sums",
    "d2_special_form",
    "decompose",
    "eval_R_exact",
    "eval_R_float",
    "extract_form",
    "parity_profile",
    "reconstruct_eval",
    "reduce_to_zeta",
    "reflection_holds",
    "zero_points",
]
