"""Default node and state names used by the assembled crash model."""

__all__ = [
    "ABSENT_STATE",
    "PRESENT_STATE",
    "EXTERNAL_NODE",
    "INTERNAL_NODE",
    "TARGET_NODE",
]

ABSENT_STATE = "NO"
PRESENT_STATE = "YES"

EXTERNAL_NODE = "external sources"
INTERNAL_NODE = "internal sources"
TARGET_NODE = "Crash"
