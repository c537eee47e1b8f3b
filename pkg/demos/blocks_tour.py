"""
Reading argument sets off the attack matrix
===========================================

Build the matrix of a small framework, cut out the four blocks that
belong to a candidate set, and read the classical properties straight
from them.
"""

from importlib import resources

from afmatrix import ArgSet, build_matrix, load
from afmatrix.matrix import a_block, c_block, cf_block, render, s_block
from afmatrix.semantics import is_admissible, is_complete, is_conflict_free, is_stable

data = resources.files("afmatrix") / "data"
af = load(str(data / "ex17.apx"))
m = build_matrix(af)
print(render(m))

# S = {1, 3, 5}, written with the file's labels
s = ArgSet.from_indices(af.n, [af.index_of[x] for x in ("1", "3", "5")])

for name, cut in [("cf", cf_block), ("s", s_block), ("a", a_block), ("c", c_block)]:
    b = cut(m, s)
    print(f"\n{name}-block rows={b.row_indices} cols={b.col_indices}")
    print(b.entries.astype(int))

# a zero cf-block means no internal attack; full s-block columns mean
# every outsider is hit
print("\nconflict-free", is_conflict_free(m, s))
print("stable       ", is_stable(m, s))
print("admissible   ", is_admissible(m, s))
print("complete     ", is_complete(m, s))

# dropping 3 keeps admissibility but 3 is still defended, so not complete
s15 = ArgSet.from_indices(af.n, [af.index_of["1"], af.index_of["5"]])
print("\n{1,5} admissible", is_admissible(m, s15), "complete", is_complete(m, s15))
