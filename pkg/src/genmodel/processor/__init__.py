'''Base and built-in Processors.'''
