"""Word-representants of melon graphs and their line graphs."""

import json

from ._melonrep import (
    REPORT_SCHEMA,
    Graph,
    MelonrepError,
    comparability,
    dot,
    first_mismatch,
    line_graph,
    line_rep_number,
    local_complement,
    melon,
    min_perm_rep,
    min_uniform_rep,
    parse_word,
    prn,
    representation_number,
    represents,
    uniformity,
    word_text,
)
from ._melonrep import analyze as _analyze


def analyze(spec, oracle=False, **budget):
    """The analyze report as a dict."""
    return json.loads(_analyze(spec, oracle, **budget))


__all__ = [
    "REPORT_SCHEMA", "Graph", "MelonrepError", "analyze", "comparability", "dot", "first_mismatch",
    "line_graph", "line_rep_number", "local_complement", "melon", "min_perm_rep", "min_uniform_rep",
    "parse_word", "prn", "representation_number", "represents", "uniformity", "word_text",
]
