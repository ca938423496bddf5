"""
Configuration documents: JSON files holding the endpoints of every shortcut.

    {"version": 1, "label": "...", "provenance": {...},
     "shortcuts": [{"u": 4.71238898038469, "v": 1.5707963267948966}, ...]}

Angles are written with repr(), which round-trips doubles exactly.
"""

import json
import math

import config
from geometry.errors import DocumentError, ShortcutToolError
from geometry.models import Configuration, Shortcut


def config_to_dict(shortcuts):
    """Serializable dict for a Configuration."""
    document = {
        'version': config.DOCUMENT_VERSION,
        'label': shortcuts.label,
        'shortcuts': [s.to_dict() for s in shortcuts],
    }
    if shortcuts.provenance:
        document['provenance'] = dict(shortcuts.provenance)
    return document


def config_from_dict(document):
    """Build a Configuration from a parsed document, validating every field."""
    if not isinstance(document, dict):
        raise DocumentError("configuration document must be a JSON object")
    version = document.get('version')
    if version != config.DOCUMENT_VERSION:
        raise DocumentError(f"unsupported document version {version!r}")
    raw = document.get('shortcuts')
    if not isinstance(raw, list):
        raise DocumentError("'shortcuts' must be a list")

    shortcuts = []
    for i, entry in enumerate(raw):
        try:
            u, v = float(entry['u']), float(entry['v'])
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"shortcut {i}: expected numeric 'u' and 'v'") from exc
        if not (math.isfinite(u) and math.isfinite(v)):
            raise DocumentError(f"shortcut {i}: endpoints must be finite")
        try:
            shortcuts.append(Shortcut(u, v))
        except ShortcutToolError as exc:
            raise DocumentError(f"shortcut {i}: {exc}") from exc

    provenance = document.get('provenance') or {}
    if not isinstance(provenance, dict):
        raise DocumentError("'provenance' must be an object")
    return Configuration(tuple(shortcuts), str(document.get('label') or ''), provenance)


def dumps(shortcuts):
    return json.dumps(config_to_dict(shortcuts), indent=2)


def loads(text):
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    return config_from_dict(document)


def save_config(shortcuts, path):
    """Write a configuration document to `path`."""
    with open(path, 'w', encoding='utf-8') as fh:
        fh.write(dumps(shortcuts))
        fh.write('\n')


def load_config(path):
    """Read a configuration document from `path`."""
    try:
        with open(path, encoding='utf-8') as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return loads(text)
