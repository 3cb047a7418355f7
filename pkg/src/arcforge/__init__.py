"""arcforge: build (k,d)-arcs from plane curves over GF(q) and verify them by exhaustion."""

__version__ = "0.1.0"
