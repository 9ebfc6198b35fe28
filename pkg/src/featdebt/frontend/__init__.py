"""Java-subset frontend: tokenizer, parser and cross-file name resolution."""

from featdebt.frontend.tokens import Token, tokenize
from featdebt.frontend.parser import parse_unit
from featdebt.frontend.resolver import build_model, resolve_type_name

__all__ = ["Token", "tokenize", "parse_unit", "build_model", "resolve_type_name"]
