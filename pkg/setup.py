#  Copyright (c) 2021. ciupy developers. All rights reserved.
#  Use of this source code is governed by a BSD-style
#  license that can be found in the LICENSE file.

# -*- coding: utf-8 -*-

from pathlib import Path

from ruamel.yaml import YAML
from setuptools import setup, find_packages

__package__ = 'ciupy'
HERE = Path(__file__).parent


class PackageInfo(object):
    """Package metadata read from ``ciupy/conf.yml``, the single place to bump the version."""

    def __init__(self, conf_file):
        with open(conf_file, 'r') as f:
            self._info = YAML(typ='safe').load(f)
        self.name = __package__

    @staticmethod
    def requirements(filename='requirements.txt'):
        """
        Requirement specifiers of a text file, comments and blank lines dropped.

        Parameters
        ----------
        filename: str
            Requirement file, relative to this directory.

        Returns
        -------
            str-list
        """
        path = HERE / filename
        if not path.exists():
            print("'{}' not found!".format(filename))
            return []
        lines = (line.split('#', 1)[0].strip() for line in path.read_text(encoding='utf-8').splitlines())
        return [line for line in lines if line]

    def __getattr__(self, item: str):
        try:
            return self._info[item]
        except KeyError:
            return None


if __name__ == "__main__":
    package = PackageInfo(str(HERE / __package__ / 'conf.yml'))
    version = package.version + package.release
    github_url = 'https://github.com/{0}/{1}'.format(package.github_username, package.name)

    setup(
        python_requires='>=3.8',
        name=package.name,
        description=package.short_description,
        long_description=package.long_description,
        version=version,
        author=', '.join(package.author),
        author_email=package.author_email,
        maintainer=', '.join(package.maintainer),
        maintainer_email=package.maintainer_email,
        packages=find_packages(exclude=['*.tests', '*.tests.*', 'tests.*', 'tests']),
        include_package_data=True,
        package_data={'': ['*.yml']},
        url=github_url,
        download_url='{0}/archive/v{1}.tar.gz'.format(github_url, version),
        classifiers=[
            'Development Status :: 3 - Alpha',
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: BSD License',
            'Natural Language :: English',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Topic :: Scientific/Engineering :: Artificial Intelligence',
        ],
        platforms=['Windows', 'MacOS', 'Unix'],
        license=package.license,
        setup_requires=['pytest-runner', 'ruamel.yaml'],
        install_requires=PackageInfo.requirements(),
        tests_require=PackageInfo.requirements('devtools/requirements_test.txt'),
        entry_points={'console_scripts': ['ciupy = ciupy.cli:main']})
