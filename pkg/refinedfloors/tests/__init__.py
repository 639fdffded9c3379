"""Tests package for refinedfloors"""
