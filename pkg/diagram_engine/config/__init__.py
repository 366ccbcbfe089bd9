"""
Configuration module - Engine defaults and constants
"""

# Semua randomness lewat seed eksplisit
DEFAULT_SEED = 0

# Batas ukuran matrix dense (jumlah entry)
DENSE_ENTRY_CAP = 2**28
RANK_ENTRY_CAP = 2**16

# Toleransi numerik
CONSTRUCTION_TOLERANCE = 1e-10
CONTINUOUS_TOLERANCE = 1e-8
FLOAT_DEVIATION_TOLERANCE = 1e-12

BENCH_TRIALS = 1000
CHECK_TRIALS = 200

# Kapasitas cache enumerator diagram per fungsi
ENUMERATION_CACHE_SIZE = 64

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

__all__ = [
    "DEFAULT_SEED",
    "DENSE_ENTRY_CAP",
    "RANK_ENTRY_CAP",
    "CONSTRUCTION_TOLERANCE",
    "CONTINUOUS_TOLERANCE",
    "FLOAT_DEVIATION_TOLERANCE",
    "BENCH_TRIALS",
    "CHECK_TRIALS",
    "ENUMERATION_CACHE_SIZE",
    "LOG_FORMAT",
]
