"""utils module"""
