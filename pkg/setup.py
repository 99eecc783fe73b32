#!/usr/bin/env python3
from setuptools import setup, find_packages


with open('README.md', 'r', encoding='utf-8') as fd:
    long_description = fd.read()


setup(
    name='genmodel',
    use_scm_version=True,
    description='Build models of infinitary theories by forcing over finite classes of structures.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(where='src', include=['genmodel*']),
    package_dir={'': 'src'},
    package_data={'genmodel': ['scenarios/*.json']},
    install_requires=[
        'numpy>=1.16.3',
        'Click>=7.0',
        'metrohash>=0.1.1',
        'pyparsing>=3.0.0',
    ],
    setup_requires=[
        'setuptools_scm',
    ],
    extras_require={
        'docs': [
            'sphinx-copybutton>=0.4.0',
            'sphinx-rtd-theme>=1.0.0',
        ],
        'tests': [
            'pytest',
            'pytest-cov',
            'hypothesis>=6.0',
        ],
    },
    entry_points={
        'console_scripts': [
            'genmodel=genmodel.cli:main',
        ],
    },
    python_requires='>=3.8',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
    ]
)
