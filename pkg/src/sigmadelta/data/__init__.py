"""Shipped system files and fixtures."""
