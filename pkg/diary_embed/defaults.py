NAME = 'diary_embed'

# CLI settings
LOG_LEVEL = 'WARNING'

# Exit statuses of the harness
EXIT_OK = 0
EXIT_INVARIANT_VIOLATION = 1
EXIT_CONFIG_ERROR = 2

# Environment variables
ENV_BFS_CAP = 'DIARY_EMBED_BFS_CAP'
ENV_CONFIG_FILE = 'DIARY_EMBED_CONFIG_FILE'

# Reserved letters
STAR = '★'  # day marker of starred sentences
PAD = '⋆'  # padding letter of norm_r
SENTINEL = '⊥'  # padding of final-letter suffixes
OUT_OF_RANGE = '∅'  # finite statistics addressing a word before the first day

# Sentence text format
WORD_SEPARATOR = '|'

# Ball / BFS settings
BFS_CAP = 10
MAX_BALL_ELEMENTS = 2_000_000

# Harness settings
RADIUS = 4
SAMPLES = 0
SEED = 0
SAMPLE_LENGTH = 12
OUTPUT_FORMAT = 'jsonl'
FAILURES_FILE = 'selftest-failures.txt'
DIARY_KAPPA = 3

# Embedding settings, the values used by the hexagon embedding
MODE_PAPER = 'paper'
MODE_CUSTOM = 'custom'
CUSTOM_KAPPA = 32
# commands that plot distortions default to custom mode, every other one to paper mode
CUSTOM_MODE_COMMANDS = ('distort', 'classify')

FINITE_STATISTICS = [{'type': 'last-letter'}]
J_FINITE = 2
LINEAR_STATISTICS = [
    {'type': 'ltrunc', 'config': {'tau': 12}},
    {'type': 'decimal-length-ltrunc', 'config': {'tau': 12}},
]
DELTA = 0
J_LINEAR = 2
N_AWL = 18
EPSILON = 1

# Default services
DEFAULT_EXECUTOR = {
    'type': 'local'
}
DEFAULT_RECORD_STORE = {
    'type': 'buffered'
}
