from .grammar import Cfg, cnf, cyk_language, cyk_member, make_cfg, to_cfg, to_final_state_free
from .machine import (
    EPS,
    ZERO_STAR_ONE_DFA,
    Configuration,
    Dfa,
    Inconclusive,
    Pda,
    SearchResult,
    accepts,
    accepts_search,
    from_dfa,
    make_pda,
    normalize,
    replay_certificate,
    step,
    union,
)
from .textformat import dumps, loads

__all__ = [
    "EPS", "ZERO_STAR_ONE_DFA", "Cfg", "Configuration", "Dfa", "Inconclusive", "Pda",
    "SearchResult", "accepts", "accepts_search", "cnf", "cyk_language", "cyk_member",
    "dumps", "from_dfa", "loads", "make_cfg", "make_pda", "normalize", "replay_certificate",
    "step", "to_cfg", "to_final_state_free", "union",
]
