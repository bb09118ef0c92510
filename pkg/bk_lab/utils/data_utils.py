#!/usr/bin/env python3
"""
Utilities for reading graph6 streams and colouring files
"""

import collections
import logging
import os
import sys
from typing import Iterator, List, TextIO

import regex

from bk_lab.coloring.coloring import UNASSIGNED, Coloring
from bk_lab.graphs.graph import Graph
from bk_lab.graphs.graph6 import Graph6Error, parse_graph6

logger = logging.getLogger()

Graph6Record = collections.namedtuple("Graph6Record", ["line_no", "graph", "error"])

_COLORING_LINE = regex.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def _open_text(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    return open(path, "r", encoding="ascii", errors="surrogateescape")


def ingest_graph6_stream(path: str) -> Iterator[Graph6Record]:
    """
    One record per non-blank line; a line that fails to parse yields a record with graph=None and the Graph6Error
    (carrying the 1-based line number), and the stream continues.
    """
    stream = _open_text(path)
    try:
        for line_no, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                yield Graph6Record(line_no, parse_graph6(line), None)
            except Graph6Error as e:
                error = Graph6Error(str(e), line_no=line_no)
                logger.warning("%s: %s", path, error)
                yield Graph6Record(line_no, None, error)
    finally:
        if stream is not sys.stdin:
            stream.close()


def read_graphs(path: str) -> List[Graph]:
    """Valid graphs of a graph6 file, malformed lines skipped with a warning."""
    graphs = [r.graph for r in ingest_graph6_stream(path) if r.graph is not None]
    logger.info("Read %d graphs from %s", len(graphs), path)
    return graphs


def load_graph(value: str) -> Graph:
    """
    A graph given either inline as graph6 text or as a file whose first graph6 line is used.
    """
    if value == "-" or os.path.exists(value):
        for record in ingest_graph6_stream(value):
            if record.error is not None:
                raise record.error
            return record.graph
        raise Graph6Error("no graph in {}".format(value))
    return parse_graph6(value)


def read_coloring_file(path: str, n: int) -> Coloring:
    """
    "vertex color" per line, 0-based vertex indices and 1-based colours; '#' starts a comment.
    Vertices not listed stay uncoloured.
    """
    assignment = [UNASSIGNED] * n
    with open(path, "r", encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            text = line.split("#", 1)[0]
            if not text.strip():
                continue
            match = _COLORING_LINE.match(text)
            if match is None:
                raise ValueError("{}:{}: expected 'vertex color', got {!r}".format(path, line_no, line.rstrip()))
            v, color = int(match.group(1)), int(match.group(2))
            if v >= n:
                raise ValueError("{}:{}: vertex {} out of range for n={}".format(path, line_no, v, n))
            if color < 1:
                raise ValueError("{}:{}: colours are 1-based, got {}".format(path, line_no, color))
            if assignment[v] != UNASSIGNED:
                raise ValueError("{}:{}: vertex {} coloured twice".format(path, line_no, v))
            assignment[v] = color
    return Coloring(assignment)
