"""Gröbner bases in Tate algebras mod p^N.

System files are passed as text in the same format the ``tategb`` command
line reads::

    p=5 prec=3 vars=x,y
    ---
    x + 5
    y
"""

from ._core import ParseError, TateError, gb, gen_random, gen_torsion, verify

__all__ = ["ParseError", "TateError", "gb", "gen_random", "gen_torsion", "verify"]
