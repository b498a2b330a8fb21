"""Class numbers of imaginary quadratic fields and the least prime that
splits completely in their Hilbert class fields."""

from .analytic import (
    bound_function,
    chowla_threshold,
    f_d,
    l_one_exact,
    l_one_series,
    ratio,
    x_statistic,
)
from .arith import (
    FundamentalDiscriminant,
    PrimeRange,
    chi,
    is_fundamental,
    is_prime,
    is_squarefree,
    isqrt,
    kronecker,
    sieve_primes,
    sqrt_mod,
)
from .forms import (
    BinaryQuadraticForm,
    RepresentationWitness,
    class_number,
    is_reduced,
    principal_form,
    reduce,
    reduced_forms,
    represents_prime_principally,
    splits_completely,
    splits_completely_via_reduction,
)
from .search import (
    ScanRecord,
    SplitPrimeRecord,
    build_table,
    max_discriminant_for_class_number,
    scan_min_x,
    smallest_split_prime,
)

__version__ = "0.1.0"
