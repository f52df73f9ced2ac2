"""Exact computer algebra for Fourier transforms of holonomic operators in one
variable and for monodromy zeta functions at infinity."""
from .catalog import (
    CatalogEntry,
    bessel,
    catalog_build,
    euler_product,
    gauss,
    katz,
    katz_fourier_closed_form,
)
from .exponents import (
    EXACT,
    ExactRootFailure,
    IndicialPoly,
    NotModerate,
    Numeric,
    ReciprocityReport,
    UnsupportedConfiguration,
    char_exponents,
    configuration,
    indicial_polynomial,
    monodromy_at_infinity,
    reciprocity_check,
)
from .newton import INFINITY, is_moderate_at_infinity, is_regular, localize, slopes
from .parser import (
    ParseError,
    parse_class,
    parse_exponent,
    parse_operator,
    parse_scalar,
    parse_zeta,
    print_operator,
)
from .scalars import ClassMultiset, ExpClass, ExponentQ, Parameter, PolyScalar
from .scenarios import (
    ScenarioError,
    ScenarioFile,
    load_fixture,
    read_scenario,
    run_scenario,
    write_scenario,
)
from .weyl import WeylOp, apply_to_monomial, fourier, inverse_fourier, sign_flip
from .zeta import (
    Stratum,
    ZetaFunction,
    acampo_monomial,
    chi_hypersurface,
    euler_integral,
    local_system_zeta,
    mt3_closed_form,
    mt3_via_strata,
    multiplicities_mt2,
    series_eval,
    zeta_tilde,
)

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry",
    "ClassMultiset",
    "EXACT",
    "ExactRootFailure",
    "ExpClass",
    "ExponentQ",
    "INFINITY",
    "IndicialPoly",
    "NotModerate",
    "Numeric",
    "Parameter",
    "ParseError",
    "PolyScalar",
    "ReciprocityReport",
    "ScenarioError",
    "ScenarioFile",
    "Stratum",
    "UnsupportedConfiguration",
    "WeylOp",
    "ZetaFunction",
    "acampo_monomial",
    "apply_to_monomial",
    "bessel",
    "catalog_build",
    "char_exponents",
    "chi_hypersurface",
    "configuration",
    "euler_integral",
    "euler_product",
    "fourier",
    "gauss",
    "indicial_polynomial",
    "inverse_fourier",
    "is_moderate_at_infinity",
    "is_regular",
    "katz",
    "katz_fourier_closed_form",
    "load_fixture",
    "local_system_zeta",
    "localize",
    "monodromy_at_infinity",
    "mt3_closed_form",
    "mt3_via_strata",
    "multiplicities_mt2",
    "parse_class",
    "parse_exponent",
    "parse_operator",
    "parse_scalar",
    "parse_zeta",
    "print_operator",
    "read_scenario",
    "reciprocity_check",
    "run_scenario",
    "series_eval",
    "sign_flip",
    "slopes",
    "write_scenario",
    "zeta_tilde",
]
