from setuptools import setup
from auvform import __version__


def read(filename):
    """
    Puts a file into a string.
    """
    with open(filename, "r") as f:
        return f.read()


setup(
    name="pyFormation",
    version=__version__,
    description="Leader-follower AUV formation planning with TD3",
    long_description=read("README.md"),
    long_description_content_type="text/markdown",
    install_requires=["numpy>=1.17"],
    packages=[
        "auvform",
        "auvform.dynamics",
        "auvform.disturbances",
        "auvform.environment",
        "auvform.neuralnet",
        "auvform.runner",
        "auvform.serialization",
        "auvform.td3",
    ],
    keywords=["AUV", "formation control", "reinforcement learning", "TD3"],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering",
    ],
)
