from ._galscaf import *  # noqa: F401,F403
