"""Constants for step alphabets and size bounds."""

# Step alphabets
UP = "U"
DOWN = "D"
NORTH = "N"
EAST = "E"

# Bounds
DEFAULT_ENUMERATION_BOUND = 14  # Catalan(14) = 2,674,440 paths
DEFAULT_GF_BOUND = 12
DEFAULT_TABLE_BOUND = 50
