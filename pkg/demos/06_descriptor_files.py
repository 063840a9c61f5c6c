"""Working with JSON descriptor files and the `stringy` CLI.

The corpus/ directory ships ready-made descriptors.  This script loads a
few through the library API; the same files drive the command line:

    stringy compute corpus/burkhardt_x0.json
    stringy check   corpus/synthetic_negative_fourfold.json   # exits 1
    stringy defect  corpus/fiber_node.json
    stringy compare corpus/node3fold_blowup.json corpus/node3fold_small.json

Exit codes: 0 success / all nonnegative, 1 negative verdict or mismatch,
2 malformed input.
"""

from pathlib import Path

from stringyhodge import (
    crepant_compare,
    load_bundle,
    stringy_hodge_table,
    weight_graded_dims,
)

corpus = Path(__file__).resolve().parent.parent / "corpus"

burkhardt = load_bundle(str(corpus / "burkhardt_x0.json")).descriptor
print(burkhardt.label, "->", stringy_hodge_table(burkhardt).polynomial)

blowup = load_bundle(str(corpus / "node3fold_blowup.json")).descriptor
small = load_bundle(str(corpus / "node3fold_small.json")).descriptor
print("node resolutions agree:", crepant_compare(blowup, small))

triangle = load_bundle(str(corpus / "triangle_snc.json"))
print("triangle dual complex, Gr^W_0 H^1(D):",
      weight_graded_dims(triangle.snc, 0, 1, 0, 0))

negative = load_bundle(str(corpus / "synthetic_negative_fourfold.json")).descriptor
table = stringy_hodge_table(negative)
print("synthetic fourfold h^{2,2}_st =", table.h_st(2, 2), "(negative on purpose)")
