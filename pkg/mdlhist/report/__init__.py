#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Text outputs: histogram artifacts, plot files and benchmark summaries.

The layouts live in the jinja2 templates of the `templates` directory.
"""


class ArtifactError(ValueError):
    """The text is not a histogram artifact this version can read."""
