"""Exact computations with Schur superfunctors and Schur superalgebras."""

try:
    from ._superschur import (  # installed layout
        algebra_basis,
        algebra_mult,
        act_tensor,
        basis_labels,
        dim_triple,
        hall_littlewood,
        hook_schur,
        module_character,
        run_suite,
        schur_dim,
        schur_poly,
        verify_char_type1,
        verify_char_type2,
    )
except ImportError:  # in-tree build with the extension on PYTHONPATH
    from _superschur import (
        algebra_basis,
        algebra_mult,
        act_tensor,
        basis_labels,
        dim_triple,
        hall_littlewood,
        hook_schur,
        module_character,
        run_suite,
        schur_dim,
        schur_poly,
        verify_char_type1,
        verify_char_type2,
    )

__all__ = [
    "algebra_basis",
    "algebra_mult",
    "act_tensor",
    "basis_labels",
    "dim_triple",
    "hall_littlewood",
    "hook_schur",
    "module_character",
    "run_suite",
    "schur_dim",
    "schur_poly",
    "verify_char_type1",
    "verify_char_type2",
]
