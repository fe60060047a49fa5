# Reading and writing complexes, and driving the command line tool.

import subprocess
import sys
import tempfile
from pathlib import Path

from srhk import rp2
from srhk.documents import ComplexDocument, loads, write_document

doc = ComplexDocument(rp2(), "structured", "six-vertex RP2")
print(doc.dumps()[:120], "...")
print("facet text:\n" + ComplexDocument(rp2(), "facet-text").dumps())

assert loads(doc.dumps()).complex == rp2()

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "rp2.txt"
    write_document(doc, path, "facet-text")
    for argv in (["hk-at", path, "--s", "4"], ["cm", path, "--char", "2"], ["hk-poly", path]):
        out = subprocess.run([sys.executable, "-m", "srhk", argv[0], str(argv[1]), *argv[2:]],
                             capture_output=True, text=True)
        print(f"$ srhk {argv[0]} rp2.txt {' '.join(map(str, argv[2:]))}\n{out.stdout}")
