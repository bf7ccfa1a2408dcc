"""Content-addressed on-disk store for coupling records.

Layout:

    <root>/records/<sha256>.json   one file per record
    <root>/index.json              key -> hash map

A record file holds {"payload": ..., "meta": {"engine": ..., "hash": ...}}
where the hash is sha256 over the canonical JSON bytes of the payload
alone.  Payloads carry their convention flags, so records produced under
different conventions never collide on a hash.  Writes go through a temp
file and os.replace, so a crashed run leaves no half-written record.
"""

import hashlib
import json
import os
import tempfile

from . import __version__
from .errors import StoreError
from .formats import canonical_json

INDEX_SCHEMA = "so5racah-store@1"


def record_key(chain, g1, g2, g):
    return "%s|%s x %s -> %s" % (chain, g1, g2, g)


def payload_hash(payload):
    return hashlib.sha256(canonical_json(payload)).hexdigest()


class Store:
    def __init__(self, root):
        self.root = root
        self.records_dir = os.path.join(root, "records")
        self.index_path = os.path.join(root, "index.json")
        self._index = None

    # -- index -------------------------------------------------------------

    def index(self):
        if self._index is None:
            if os.path.exists(self.index_path):
                try:
                    with open(self.index_path, "rb") as f:
                        data = json.load(f)
                except (OSError, ValueError) as e:
                    raise StoreError("cannot read index %s: %s"
                                     % (self.index_path, e))
                if data.get("schema") != INDEX_SCHEMA:
                    raise StoreError("unexpected index schema %r"
                                     % data.get("schema"))
                self._index = data["records"]
            else:
                self._index = {}
        return self._index

    def keys(self):
        return sorted(self.index())

    def hash_for(self, key):
        return self.index().get(key)

    # -- records -----------------------------------------------------------

    def record_path(self, h):
        return os.path.join(self.records_dir, h + ".json")

    def read_record(self, key):
        """Load the record for a key; raises StoreError if absent/unreadable."""
        h = self.hash_for(key)
        if h is None:
            raise StoreError("no record for key %r" % key)
        return self.read_record_file(h)

    def read_record_file(self, h):
        path = self.record_path(h)
        try:
            with open(path, "rb") as f:
                return json.load(f)
        except (OSError, ValueError) as e:
            raise StoreError("cannot read record %s: %s" % (path, e))

    def write_record(self, key, payload):
        """Write a payload under a key; returns the content hash.

        The record file is content-addressed, so rewriting identical
        content is a no-op.  The in-memory index is updated; call
        flush_index() once after a batch of writes.
        """
        h = payload_hash(payload)
        record = {"payload": payload,
                  "meta": {"engine": __version__, "hash": h}}
        path = self.record_path(h)
        if not os.path.exists(path):
            self._atomic_write(path, canonical_json(record))
        self.index()[key] = h
        return h

    def flush_index(self):
        data = {"schema": INDEX_SCHEMA,
                "records": {k: self.index()[k] for k in sorted(self.index())}}
        self._atomic_write(self.index_path, canonical_json(data))

    def _atomic_write(self, path, blob):
        d = os.path.dirname(path)
        try:
            os.makedirs(d, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
            try:
                with os.fdopen(fd, "wb") as f:
                    f.write(blob)
                os.replace(tmp, path)
            finally:
                if os.path.exists(tmp):
                    os.unlink(tmp)
        except OSError as e:
            raise StoreError("cannot write %s: %s" % (path, e))

    # -- integrity ---------------------------------------------------------

    def check_record(self, key):
        """Hash integrity for one key: recompute payload hash, compare with
        the index entry and the stored meta hash.  Returns (payload, problems)."""
        problems = []
        h = self.hash_for(key)
        record = self.read_record_file(h)
        payload = record.get("payload")
        actual = payload_hash(payload)
        if actual != h:
            problems.append("content hash %s does not match index entry %s"
                            % (actual[:12], h[:12]))
        if record.get("meta", {}).get("hash") != actual:
            problems.append("stored meta hash does not match payload")
        return payload, problems
