"""
Online group coloring
=====================

"""

from girthcolor import GroupColoring, PromiseViolation

# vertices come with a group; groups are independent sets, and each group
# meets at most delta others.  A group keeps its color until a neighbor group
# has ever used it
gc = GroupColoring(delta=2)
print(gc.color_vertex(1))                 # 1
print(gc.color_vertex(2, {1}))            # 2: group 1 owns color 1
print(gc.color_vertex(3, {2}))            # 3: group 2 has used 1 and 2
print(gc.color_vertex(1, {3}))            # 4: groups 2 and 3 have used 1, 2, 3
print(gc.used)
print(gc.max_color_used(), "<=", 2 * 2 + 2)

# a third neighbor for group 1 breaks the degree promise
gc.color_vertex(4)
try:
    gc.color_vertex(1, {4})
except PromiseViolation as exc:
    print("refused:", exc)
