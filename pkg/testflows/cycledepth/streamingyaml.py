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
import yaml
import textwrap


class Dumper(yaml.SafeDumper):
    """Dumper writing vertex tuples in flow style."""

    def represent_tuple(self, data):
        return self.represent_sequence("tag:yaml.org,2002:seq", data, flow_style=True)

    def represent_vertex_list(self, data):
        flow = all(isinstance(item, int) for item in data)
        return self.represent_sequence("tag:yaml.org,2002:seq", data, flow_style=flow)


Dumper.add_representer(tuple, Dumper.represent_tuple)
Dumper.add_representer(list, Dumper.represent_vertex_list)


class StreamingYAMLWriter:
    """Streaming YAML writer."""

    def __init__(self, stream, indent=0):
        self.stream = stream
        self.indent = indent

    def _write(self, value):
        s = yaml.dump(value, sort_keys=False, indent=2, Dumper=Dumper, allow_unicode=True)
        self.stream.write(textwrap.indent(s, prefix=" " * self.indent))
        self.stream.flush()

    def add_key_value(self, key, value):
        """Add '{key}: {value}\n'."""
        self._write({key: value})
        return self

    def add_list_element(self, value):
        """Add '- {value}\n'."""
        self._write([value])
        return self
