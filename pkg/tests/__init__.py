"""Tests for ncyb"""
