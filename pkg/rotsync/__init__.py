"""rotsync - Rotation-based time offset estimation for rigidly mounted sensors."""

__version__ = "0.1.0"
