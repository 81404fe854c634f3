import setuptools
import os

setuptools.setup(
    name="unitnilpy",
    version="0.1.0",
    author="unitnilpy developers",
    description="Exact decomposition of a square matrix into invertible plus nilpotent parts",
    long_description=open(os.path.join(os.path.dirname(__file__),
                                       "README.md")).read(),
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "numpy",
        "pandas",
    ],
    extras_require={
        "test": ["pytest", "hypothesis", "sympy"],
    },
    entry_points={
        "console_scripts": ["unitnilpy=unitnilpy.cli.main:main"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
		"License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
		"Development Status :: 4 - Beta",
		"Intended Audience :: Science/Research",
		"Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8',
)
