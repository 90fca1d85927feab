"""Artifact writers: DOT moment graphs, JSON/YAML reports, SVG tilings"""
