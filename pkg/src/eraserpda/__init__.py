"""Eraser words, their surface coding, and a pushdown automaton recognizing them."""
from ._kernels import BACKEND
from .calc import Defined, UndefinedAt, erase_cascade, erase_one, is_Ln_member, limit_prefix
from .codec import decode, encode, has_wrong_code, tokenize
from .construction import build_B, build_main, build_wrong_detector
from .oracle import is_Linf, oracle_member_B
from .words import DomainError, Eraser, Letter, Word, parse_symbolic, render_symbolic

__version__ = "0.1.0"
