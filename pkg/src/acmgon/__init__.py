"""Gonality and Clifford index of curves on planes, quadric and cubic surfaces."""
