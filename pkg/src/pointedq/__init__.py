from .scalars import Monomial, LaurentPoly, ScalarFraction
