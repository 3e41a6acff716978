# -*- coding: utf-8 -*-

from setuptools import setup, find_namespace_packages

with open('README.md', encoding='utf-8') as f:
    readme = f.read()

setup(
    name='spinorlab',
    version='0.1.0',
    description='Bilinear covariants, Lounesto classification, ELKO constructions and Hopf projections of Dirac spinors.',
    long_description=readme,
    long_description_content_type='text/markdown',
    license='MIT',
    packages=find_namespace_packages(include=['spinorlab*']),
    package_data={
        'spinorlab': [
            'templates/*.j2',
        ],
    },
    include_package_data=True,
    python_requires='>=3.9',
    install_requires=[
        'click',
        'python-dotenv',
        'jinja2',
        'numpy>=1.22',
        'PyYAML'
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': [
            'spinorlab = spinorlab.cli:cli',
        ],
    },
    classifiers=[
        'Operating System :: Microsoft :: Windows',
        'Operating System :: MacOS',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python :: 3.13',
        'Topic :: Scientific/Engineering :: Physics',
    ]
)
