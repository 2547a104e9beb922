"""Proof checking, model search and decision procedures for hoops, coops and their logics."""

__version__ = "0.3.0"
