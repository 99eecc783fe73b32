'''Base and built-in Pipelines.'''
