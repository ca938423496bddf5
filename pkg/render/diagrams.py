"""
Circle and strip diagrams of a configuration.

Colors follow the shortcut index through config.PALETTE, so the same shortcut
has the same color in both diagrams.
"""

import math

import numpy as np

import config
from geometry.arcs import umbra
from geometry.errors import DomainError
from geometry.strip import config_rectangles, uncovered_cells
from geometry.utils.calculations import TWO_PI
from render.scene import SvgScene

MIN_PIECE = 1e-9    # θ-pieces narrower than this are not drawn
ARC_SAMPLES = 64


def color_for(index):
    return config.PALETTE[index % len(config.PALETTE)]


def render_circle(shortcuts, show_umbra=False):
    """Unit circle with every shortcut as a chord, optionally with its umbra arcs."""
    width, height = config.CIRCLE_CANVAS
    cx, cy = width / 2, height / 2
    radius = min(width, height) / 2 - config.CANVAS_MARGIN

    def point(theta, r=radius):
        return cx + r * math.cos(theta), cy - r * math.sin(theta)

    scene = SvgScene(width, height)
    scene.circle(cx, cy, radius, 'outline', stroke='black', width=1.5)
    for index, s in enumerate(shortcuts):
        color = color_for(index)
        (x1, y1), (x2, y2) = point(s.u), point(s.v)
        scene.line(x1, y1, x2, y2, 'chord', stroke=color, width=2.0, owner=index)
        scene.circle(x1, y1, 3, 'endpoint', stroke=color, fill=color, owner=index)
        scene.circle(x2, y2, 3, 'endpoint', stroke=color, fill=color, owner=index)
        if show_umbra:
            for arc in umbra(s):
                thetas = arc.start + np.linspace(0.0, arc.length, ARC_SAMPLES)
                scene.polyline([point(t, radius * 1.04) for t in thetas], 'umbra',
                               stroke=color, width=4.0, opacity=0.6, owner=index)
    if shortcuts.label:
        scene.text(10, 10, shortcuts.label)
    return scene


def render_strip(shortcuts, dstar=None):
    """
    The strip [0, 2π] × [−δ*, δ*] with the region rectangles of every shortcut.

    Draws the midline, both boundary lines and (for non-empty configurations) the
    uncovered cells.

    Args:
        shortcuts (Configuration): Configuration to draw
        dstar (float): Strip half-height; defaults to the configuration's target δ*
    """
    dstar = shortcuts.target_dstar if dstar is None else float(dstar)
    if dstar is None:
        raise DomainError("the strip diagram needs δ*; this configuration records none")

    width, height = config.STRIP_CANVAS
    margin = config.CANVAS_MARGIN
    inner_w, inner_h = width - 2 * margin, height - 2 * margin

    def x_of(theta):
        return margin + theta / TWO_PI * inner_w

    def y_of(xi):
        if dstar <= 0:
            return height / 2
        return height / 2 - xi / dstar * inner_h / 2

    scene = SvgScene(width, height)
    scene.rect(margin, margin, inner_w, inner_h, 'outline', stroke='black', width=1.5)

    rects = config_rectangles(shortcuts, dstar)
    for rect in rects:
        color = color_for(rect.owner)
        for lo, hi in rect.theta_intervals():
            if hi - lo < MIN_PIECE:
                continue
            scene.rect(x_of(lo), y_of(rect.xi_high), x_of(hi) - x_of(lo),
                       y_of(rect.xi_low) - y_of(rect.xi_high), 'region',
                       stroke=color, fill=color, opacity=0.45, owner=rect.owner)

    if len(shortcuts):
        for cell in uncovered_cells(rects, dstar):
            for lo, hi in cell.theta_intervals():
                if hi - lo < MIN_PIECE:
                    continue
                top, bottom = y_of(cell.xi_high), y_of(cell.xi_low)
                scene.rect(x_of(lo), top, x_of(hi) - x_of(lo), max(bottom - top, 1.0), 'gap',
                           stroke=config.GAP_COLOR, fill=config.GAP_COLOR, opacity=0.8)

    scene.line(margin, y_of(0.0), width - margin, y_of(0.0), 'midline', stroke='black', width=1.0)
    for xi in (dstar, -dstar):
        scene.line(margin, y_of(xi), width - margin, y_of(xi), 'boundary', stroke='black', width=2.0)
    scene.text(10, 10, f'{shortcuts.label} (δ* = {format(dstar, config.NUMBER_FORMAT)})'
               if shortcuts.label else f'δ* = {format(dstar, config.NUMBER_FORMAT)}')
    return scene
