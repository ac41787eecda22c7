"""Figure rendering for chaoskd CSV outputs."""

from .render import main, render_overlay, render_spectrum
