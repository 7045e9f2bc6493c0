"""JSON Schemas for input documents"""
