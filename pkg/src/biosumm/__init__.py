"""Multi-document biography summarization: "who is X?" answered from news text."""

__version__ = "0.1.0"
