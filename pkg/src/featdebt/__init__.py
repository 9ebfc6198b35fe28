"""featdebt - feature-level technical debt analyzer for Java codebases.

Pipeline: parse Java sources into a cross-referenced code model, compute
object-oriented metrics, detect metric-based code smells, group files into
user-facing features via reference-graph reachability, and rank features
by the amount of debt they carry. A repository miner tracks debt inserted
and paid across git revisions.
"""

__version__ = "0.1.0"
