"""
Drawing a path
==============

ASCII art for the terminal, SVG for everything else.  With homology marks
on, the points standing for injectives of projective dimension one (P) and
for syzygies that are radicals (R) are circled.
"""

import sys

from nakayama321 import parse_path
from nakayama321.render import render_ascii, render_svg

path = parse_path("UUUDUUUDDDUDDDUD")
print(render_ascii(path, homology=True))

target = sys.argv[1] if len(sys.argv) > 1 else "example_path.svg"
with open(target, "w", encoding="utf-8") as fh:
    fh.write(render_svg(path, homology=True))
print("wrote", target)
