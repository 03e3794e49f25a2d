"""Constants for CLI interface."""

# Exit codes
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

# Display constants
MAX_PATHS_TO_DISPLAY = 50
MAX_MISMATCHES_TO_DISPLAY = 10

# Table header cell above the row labels
TABLE_CORNER = "n\\j"

# Logging
LOG_FORMAT = "%(asctime)-15s | %(levelname)-8s | %(message)s"

# Default values
DEFAULT_VERIFY_NMAX = 8
