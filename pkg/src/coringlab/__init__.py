"""Exact computation with corings over number fields.

The package computes, in exact rational arithmetic, the correspondence
between intermediate division rings of a field extension and coideals of the
associated comatrix coring, together with the dual picture in terms of
endomorphism rings.
"""

from ._backend import backend_name
from .fields import QQ, NumberField, field_preset

__version__ = "0.1.0"

__all__ = ["QQ", "NumberField", "field_preset", "backend_name", "__version__"]
