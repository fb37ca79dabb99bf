from .baselines import CharInclusionDomain, PrefixDomain, SuffixDomain
from .booleans import BOTH, FALSE, TRUE, BoolSet
from .coalesced import BOTTOM, TOP_VALUE, AbstractValue, Values
from .intervals import INF, Interval
from .string_domains import DOMAINS, CharFADomain, TarsisDomain, make_domain

__all__ = [
    "BOTH", "BOTTOM", "DOMAINS", "FALSE", "INF", "TOP_VALUE", "TRUE",
    "AbstractValue", "BoolSet", "CharFADomain", "CharInclusionDomain",
    "Interval", "PrefixDomain", "SuffixDomain", "TarsisDomain", "Values",
    "make_domain",
]
