"""
Constant values used in seqgames.
"""

# Move address tags
LEFT = "l"
RIGHT = "r"
INDEX_PREFIX = "i:"
COPY_PREFIX = "c:"

# Base moves
QUESTION = "q"
SIGMA_VALUE = "*"
UNIT_ATOM = "*"

DEFAULT_DEPTH = 6
DEFAULT_BUDGET = 64
DEFAULT_NODE_BUDGET = 200000
DEFAULT_UNFOLD_LIMIT = 48
DEFAULT_STACK_BOUND = 8
DEFAULT_REL_BOUND = 4
MAX_POWER = 4

# Depth used when map_seq audits the strictness of its left argument.
STRICTNESS_DEPTH = 2

DEFAULT_CORPUS = (
    "I",
    "sigma",
    "flat{0,1}",
    "flat{0,1,2}",
    "prod(sigma,sigma)",
    "tensor(sigma,sigma)",
    "seq(sigma,sigma)",
)
CORPUS_ENV_VAR = "SEQGAMES_CORPUS"

SUITE_IMPORT_PATH = "seqgames.suites"
SUITE_CLASS_NAME = "Suite"
SUITE_ORDER = (
    "category",
    "iso",
    "sequoid-coherence",
    "coalgebra",
    "alpha-formula",
    "comonoid",
    "strong-monoidal",
    "monoidal-coherence",
    "cofree",
    "functoriality",
    "powers",
    "stateful",
    "fixpoint",
    "rel",
    "rank",
)
