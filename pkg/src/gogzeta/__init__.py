"""Ihara zeta and Artin-Ihara L-functions of graphs with legs and edge-free quotients."""
