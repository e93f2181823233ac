#
# Copyright (C) 2024 mdlhist Developers.
#
# This software is licensed under the GNU Affero General Public License
# version 3 (see the file LICENSE).

"""Loading the report templates."""

from jinja2 import Environment, PackageLoader


def float_repr(value):
    """The shortest text that reads back as the same float."""
    return repr(float(value))


class Templates(object):
    """The report templates of mdlhist."""

    def __init__(self):
        loader = PackageLoader('mdlhist.report', 'templates')
        self.env = Environment(
            loader=loader, trim_blocks=True, keep_trailing_newline=True)
        self.env.filters['repr'] = float_repr
        self.templates = {
            'artifact': self.env.get_template('artifact.txt'),
            'plot': self.env.get_template('plot.txt'),
            'summary': self.env.get_template('summary.txt'),
            }

    def get_template(self, template_name):
        return self.templates[template_name]

    def render(self, template_name, **context):
        return self.get_template(template_name).render(**context)


_templates = None


def get_templates():
    global _templates
    if _templates is None:
        _templates = Templates()
    return _templates
