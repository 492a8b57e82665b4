"""Setup script for the nhgraph package."""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="nhgraph",
    version="0.1.0",
    description="Spectra, exceptional points and metric operators of non-Hermitian graph Hamiltonians",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=['nhgraph', 'nhgraph.*']),
    package_data={
        'nhgraph.config': ['default-config.yaml'],
    },
    install_requires=[
        'numpy>=1.22',
        'scipy>=1.8',
        'PyYAML>=6.0',
        'rich>=13.0.0',
    ],
    python_requires=">=3.9",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    entry_points={
        'console_scripts': [
            'nhgraph=nhgraph.__main__:main',
        ],
    },
)
