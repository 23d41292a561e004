"""Params files, wire format and the TCP peer."""
