"""Table generation utilities"""
