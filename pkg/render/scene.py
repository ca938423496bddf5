"""
SvgScene: a list of styled primitives in pixel coordinates (y down).

Primitives stay inspectable as data; to_svg() draws them with matplotlib onto a
figure the size of the canvas and returns a standalone SVG 1.1 document.
"""

import io
import logging
from dataclasses import dataclass, field
from typing import Optional

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Circle, Rectangle

import config
from geometry.errors import DomainError

log = logging.getLogger(__name__)

TAGS = ('outline', 'chord', 'endpoint', 'umbra', 'region', 'midline', 'boundary', 'gap', 'label')


@dataclass(frozen=True)
class Primitive:
    kind: str                      # circle | line | polyline | rect | text
    tag: str
    coords: tuple
    stroke: Optional[str] = None
    fill: Optional[str] = None
    width: float = 1.0
    opacity: float = 1.0
    text: str = ''
    owner: Optional[int] = None


@dataclass
class SvgScene:
    width: int
    height: int
    primitives: list = field(default_factory=list)

    def _add(self, kind, tag, coords, **style):
        if tag not in TAGS:
            raise DomainError(f"unknown primitive tag {tag!r}")
        primitive = Primitive(kind, tag, tuple(float(c) for c in coords), **style)
        self.primitives.append(primitive)
        return primitive

    def circle(self, cx, cy, r, tag, **style):
        return self._add('circle', tag, (cx, cy, r), **style)

    def line(self, x1, y1, x2, y2, tag, **style):
        return self._add('line', tag, (x1, y1, x2, y2), **style)

    def polyline(self, points, tag, **style):
        flat = [c for point in points for c in point]
        return self._add('polyline', tag, flat, **style)

    def rect(self, x, y, w, h, tag, **style):
        return self._add('rect', tag, (x, y, w, h), **style)

    def text(self, x, y, text, tag='label', **style):
        return self._add('text', tag, (x, y), text=text, **style)

    def by_tag(self, tag):
        return [p for p in self.primitives if p.tag == tag]

    def owners(self, tag):
        """Distinct shortcut indices among primitives with `tag`."""
        return sorted({p.owner for p in self.by_tag(tag) if p.owner is not None})

    # ─── SVG output ─────────────────────────────────────────────

    def to_svg(self):
        """Standalone SVG 1.1 text; identical scenes give identical bytes."""
        fig = Figure(figsize=(self.width / 72, self.height / 72), dpi=72)
        ax = fig.add_axes((0, 0, 1, 1))
        ax.set_xlim(0, self.width)
        ax.set_ylim(self.height, 0)
        ax.set_axis_off()
        for primitive in self.primitives:
            _draw(ax, primitive)

        buffer = io.StringIO()
        with matplotlib.rc_context({'svg.hashsalt': config.SVG_HASH_SALT, 'svg.fonttype': 'none'}):
            fig.savefig(buffer, format='svg', metadata={'Date': None})
        log.debug("rendered %d primitives on %dx%d canvas", len(self.primitives), self.width, self.height)
        return buffer.getvalue()

    def save(self, path):
        with open(path, 'w', encoding='utf-8') as fh:
            fh.write(self.to_svg())


def _draw(ax, p):
    stroke = p.stroke or 'none'
    fill = p.fill or 'none'
    if p.kind == 'circle':
        cx, cy, r = p.coords
        ax.add_patch(Circle((cx, cy), r, edgecolor=stroke, facecolor=fill,
                            linewidth=p.width, alpha=p.opacity))
    elif p.kind == 'line':
        x1, y1, x2, y2 = p.coords
        ax.plot([x1, x2], [y1, y2], color=stroke, linewidth=p.width, alpha=p.opacity)
    elif p.kind == 'polyline':
        xs, ys = p.coords[0::2], p.coords[1::2]
        ax.plot(xs, ys, color=stroke, linewidth=p.width, alpha=p.opacity)
    elif p.kind == 'rect':
        x, y, w, h = p.coords
        ax.add_patch(Rectangle((x, y), w, h, edgecolor=stroke, facecolor=fill,
                               linewidth=p.width, alpha=p.opacity))
    elif p.kind == 'text':
        x, y = p.coords
        ax.text(x, y, p.text, color=p.stroke or 'black', fontsize=12, va='top')
