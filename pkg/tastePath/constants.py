from enum import Enum


class CandidateKind(str, Enum):
    """Which transition a candidate user-genre pair is watched for"""

    APPEARANCE = "appearance"  # A+: absent in the penultimate window, heard before
    DISAPPEARANCE = "disappearance"  # A-: present in the penultimate window

    @classmethod
    def parse(cls, value: str) -> "CandidateKind":
        return cls(value.strip().lower())


class Stage(str, Enum):
    """Pipeline stages, in execution order"""

    INGEST = "ingest"
    TRAJECTORIES = "trajectories"
    MINE = "mine"
    LEARN = "learn"
    EMBED = "embed"
    PREDICT = "predict"
    EVALUATE = "evaluate"
    ANALYZE = "analyze"
    SWEEP = "sweep"
    SYNTH = "synth"


class Split(str, Enum):
    """Train side reads windows 1..K-2 with labels from K-1; eval side reads 1..K-1"""

    TRAIN = "train"
    EVAL = "eval"


class ModelName(str, Enum):
    POPULARITY = "popularity"
    NMF = "nmf"
    PREVIOUS = "previous"
    PLUG_PREVIOUS = "plug_previous"


# Row-sum tolerance of allocation and prediction rows
ROW_SUM_TOL = 1e-9

# Trajectory sampling
DEFAULT_N_PER_PAIR = 1000
DEFAULT_TOTAL_TRAJECTORIES = 5000
DEFAULT_HOLDOUT_TRAJECTORIES = 5000
DEFAULT_EMBED_PER_PAIR = 100

# Candidate mining, lengths counted in nodes
DEFAULT_L_MAX = 10
DEFAULT_TOP_M = 10000

# Dictionary learning
DEFAULT_LAMBDA = 0.0025
DEFAULT_LEARNING_RATE = 0.01
DEFAULT_MAX_EPOCHS = 500
DEFAULT_PATIENCE = 5
DEFAULT_STAGNATION_TOL = 1e-4
DEFAULT_ALPHA_INIT_HIGH = 0.1

# Plug-Previous decision threshold
CLASSIFIER_THRESHOLD = 0.5

# NMF baseline
DEFAULT_NMF_RANK = 16
DEFAULT_NMF_ITERS = 500
DEFAULT_NMF_TOL = 1e-6

# Stable artifact file names
MANIFEST_FILE = "manifest.json"
ALLOCATION_FILE = "allocation_counts.csv"
INDEX_FILE = "index.json"
COLISTENING_FILE = "colistening.csv"
CANDIDATES_FILE = "candidates.csv"
METRICS_FILE = "metrics.json"
TRAIN_CANDIDATES_FILE = "candidates_train.csv"
SELECTED_FILE = "selected.jsonl"
HELD_OUT_FILE = "held_out.jsonl"
PAIR_TRAJECTORIES_FILE = "pairs_{split}.jsonl"
GRAPH_FILE = "graph.tsv"
MINED_FILE = "candidates.jsonl"
DICTIONARY_FILE = "dictionary.jsonl"
LOSS_FILE = "loss_history.csv"
CODE_MODEL_FILE = "code_model.joblib"
DICTIONARY_METRICS_FILE = "dictionary_metrics.json"
EMBEDDINGS_FILE = "embeddings_{split}.csv"
PREDICTION_FILE = "{model}.csv"
CLASSIFIER_FILE = "classifier_{kind}.joblib"
PREDICT_REPORT_FILE = "predict_report.json"
VARIATION_FILE = "variation.csv"
VARIATION_BUCKETS_FILE = "variation_buckets.csv"
PATHLETS_FILE = "pathlets.csv"
DIVERSITY_FILE = "diversity_by_popularity.csv"
RECONSTRUCTION_FILE = "sampling_reconstruction.csv"
SWEEP_FILE = "sweep.csv"
PLANTED_FILE = "planted.jsonl"
RECOVERY_FILE = "recovery.json"
