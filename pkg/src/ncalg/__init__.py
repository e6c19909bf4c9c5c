"""Graded noncommutative algebras: rewriting, Ext via bar complexes, A-infinity models."""
