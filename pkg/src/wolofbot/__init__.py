"""Wolof voicebot toolkit: text processing, intent NLU, speech-support
utilities (WER, ASR-noise simulation, n-gram LM, G2P) and a dialogue
engine served over a Messenger-like HTTP gateway.
"""

__version__ = "0.1.0"
