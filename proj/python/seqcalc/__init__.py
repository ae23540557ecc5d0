"""Exact sequence calculus: catalog families, combinatorial numbers, and the
identity registry, backed by the C++ core."""

try:
    from ._seqcalc import (
        SeqcalcError,
        appendix_table,
        bell,
        binomial,
        eulerian,
        factorial,
        fubini,
        identity_keys,
        scalar_roundtrip,
        stirling1_unsigned,
        stirling2,
        terms,
        terms_int,
        verify,
        verify_all,
    )
except ImportError:  # in-tree builds keep the extension next to the package
    from _seqcalc import (
        SeqcalcError,
        appendix_table,
        bell,
        binomial,
        eulerian,
        factorial,
        fubini,
        identity_keys,
        scalar_roundtrip,
        stirling1_unsigned,
        stirling2,
        terms,
        terms_int,
        verify,
        verify_all,
    )

__all__ = [
    "SeqcalcError",
    "appendix_table",
    "bell",
    "binomial",
    "eulerian",
    "factorial",
    "fubini",
    "identity_keys",
    "scalar_roundtrip",
    "stirling1_unsigned",
    "stirling2",
    "terms",
    "terms_int",
    "verify",
    "verify_all",
]
