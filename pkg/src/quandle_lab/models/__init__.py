"""models module"""
