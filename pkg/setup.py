#!/usr/bin/python3
from setuptools import setup
setup(data_files=[('share/man/man1', ['mdlhist.1'])])
