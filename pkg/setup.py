from setuptools import setup
from codecs import open

with open("README.md") as f:
    long_description = f.read()

setup(
    name="hblab",
    version="1.0",
    description="Numerical laboratory for Bloch-type harmonic mappings of the unit disk",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="harmonic mappings bloch univalence",
    python_requires=">=3.7",
    packages=["hblab", "hblab.exporter", "hblab.suites"],
    package_data={"hblab.exporter": ["templates/*.md"]},
    install_requires=[
        "numpy",
        "scipy",
        "shapely",
        "jinja2",
        "toml",
    ],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": {"hblab=hblab.main:run"}},
)
