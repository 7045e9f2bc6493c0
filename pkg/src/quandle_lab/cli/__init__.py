"""cli module"""
