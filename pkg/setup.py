#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The setup script."""

from setuptools import find_packages, setup

with open('README.md') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

with open('requirements.txt') as f:
    requirements = f.read().splitlines()
with open('requirements_dev.txt') as f:
    # ignore the general requirements
    requirements_dev = f.read().splitlines()[1:]
with open('requirements_doc.txt') as f:
    requirements_doc = f.read().splitlines()

setup(
    name='pyvdp',
    version='0.1.0',
    description=("Steady-state response, susceptibility and Wigner functions "
                 "of the driven quantum van der Pol oscillator."),
    long_description=readme,
    long_description_content_type='text/markdown',
    author="pyvdp contributors",
    packages=find_packages(
        include=['pyvdp', 'pyvdp.*']),
    include_package_data=True,
    install_requires=requirements,
    license="MIT license",
    zip_safe=False,
    keywords='pyvdp',
    classifiers=[
            'Development Status :: 3 - Alpha',
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: MIT License',
            'Natural Language :: English',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',
            'Programming Language :: Python :: 3.11',
            'Topic :: Scientific/Engineering :: Physics',
    ],
    entry_points={
        'console_scripts': [
            'pyvdp=pyvdp.cli:main',
        ],
    },
    python_requires='>=3.8',
    test_suite='tests',
    tests_require=requirements_dev,
    extras_require={
        'docs': requirements_doc,
        'devs': requirements_dev,
    }
)
