#!/usr/bin/env python3
"""Download the small public benchmark graphs into data/.

Both files come from the KONECT collection:

    cora.txt      citation network, 23,166 nodes / 89,157 edges after
                  symmetrization and dedup
    topology.txt  internet topology, 34,761 nodes / 107,720 edges

The raw KONECT archives carry '%'-prefixed headers and optional extra
columns; the loader handles both, so the edge files are stored verbatim.
Usage: python scripts/fetch_datasets.py [--dest data/]
"""

from __future__ import annotations

import argparse
import io
import sys
import tarfile
import urllib.request
from pathlib import Path

SOURCES = {
    "cora.txt": [
        "http://konect.cc/files/download.tsv.subelj_cora.tar.bz2",
        "https://konect.cc/files/download.tsv.subelj_cora.tar.bz2",
    ],
    "topology.txt": [
        "http://konect.cc/files/download.tsv.topology.tar.bz2",
        "https://konect.cc/files/download.tsv.topology.tar.bz2",
    ],
}


def fetch_one(name: str, urls: list[str], dest: Path) -> bool:
    target = dest / name
    if target.exists():
        print(f"{target} already present, skipping")
        return True
    for url in urls:
        try:
            print(f"downloading {url} ...")
            with urllib.request.urlopen(url, timeout=120) as resp:
                blob = resp.read()
        except Exception as exc:
            print(f"  failed: {exc}")
            continue
        with tarfile.open(fileobj=io.BytesIO(blob), mode="r:bz2") as tar:
            member = next(m for m in tar.getmembers()
                          if Path(m.name).name.startswith("out."))
            data = tar.extractfile(member).read()
        target.write_bytes(data)
        print(f"  wrote {target} ({len(data)} bytes)")
        return True
    return False


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", default=Path(__file__).resolve().parent.parent / "data",
                        type=Path)
    args = parser.parse_args(argv)
    args.dest.mkdir(parents=True, exist_ok=True)
    ok = True
    for name, urls in SOURCES.items():
        ok &= fetch_one(name, urls, args.dest)
    if not ok:
        print("some downloads failed; dataset-dependent tests will be skipped",
              file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
