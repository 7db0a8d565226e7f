"""Static constants for SVG rendering."""

from chordcolor.instance import Color

SVG_NS = "http://www.w3.org/2000/svg"

RADIUS = 100
MARGIN = 10

# Stroke colour per chord color; chords without a color are drawn gray.
PALETTE = {
    Color.RED: "#d62728",
    Color.GREEN: "#2ca02c",
    Color.BLUE: "#1f77b4",
}
UNCOLORED = "#999999"
