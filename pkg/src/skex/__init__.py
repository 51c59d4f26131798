"""skex: a deterministic toolkit for sketch-and-extrude CAD sequences.

Subpackages:
  seqmodel  - command types, JSON/token forms, logit decoding, validation
  geomkern  - execution of sequences into solids, occupancy, sampling, meshes
  wireframe - line/endpoint binding and line-of-interest sampling
  imaging   - camera rings, software rendering, edge-map extraction
  metrics   - accuracies, invalid ratio, Chamfer distance, training loss
  pipeline  - dataset construction, evaluation orchestration, CLI
"""

__version__ = "0.1.0"
