#!/usr/bin/env python3
# Copyright 2023 Katteli Inc.
# TestFlows.com Open-Source Software Testing Framework (http://testflows.com)
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
from setuptools import setup

with open("README.rst", "r", encoding="utf-8") as fd:
    long_description = fd.read()


setup(
    name="testflows.cycledepth",
    version="1.0.0.dev0",  # __VERSION__ is substituted at release time
    description="Long cycles through every edge of 2-connected graphs with exact treedepth, treewidth and circumference",
    author="Vitaliy Zakaznikov",
    author_email="vzakaznikov@testflows.com",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    url="https://github.com/testflows/testflows-cycledepth",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: POSIX :: Linux",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.10",
    license="Apache-2.0",
    packages=[
        "testflows.cycledepth",
        "testflows.cycledepth.bin",
        "testflows.cycledepth.config",
    ],
    package_data={
        "testflows.cycledepth.bin": ["cycledepth"],
    },
    scripts=["testflows/cycledepth/bin/cycledepth"],
    zip_safe=False,
    install_requires=[
        "PyYAML==6.0.2",
        "networkx>=3.1",
        "graphviz>=0.20",
        "numpy>=1.24",
        "numba>=0.58",
    ],
    extras_require={"dev": ["pytest>=7.4", "hypothesis>=6.80"]},
)
