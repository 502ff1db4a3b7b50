"""Hall algebra of colored rooted forests, bound to the C++ core.

    >>> from crfhopf import Algebra
    >>> Algebra("a").hall_mul("a", "a")
    {'a+a': Fraction(2, 1), 'a[a]': Fraction(1, 1)}
"""

from ._core import Algebra, CrfError, ParseError, SizeLimitError

__all__ = ["Algebra", "CrfError", "ParseError", "SizeLimitError"]
