# -*- coding: utf-8 -*-
"""Module grouping the dataset writers and the output location."""
import io
import json
import math
import os

import numpy as np

import pyvdp

FLOAT_FORMAT = '%.17g'

#: Config keys that do not influence the numbers and are left out of headers.
NON_NUMERIC_KEYS = ('output', 'workers')


def get_output_dir(path=None):
    """Directory where datasets are written.

    Parameters
    ----------
    path : str, optional
        Explicit directory, takes precedence.

    Returns
    -------
    str
        `path` if given, else the value of the environment variable
        PYVDP_OUTPUT_DIR, else the current working directory.

    """
    if path is not None:
        return path
    if 'PYVDP_OUTPUT_DIR' in os.environ:
        return os.environ['PYVDP_OUTPUT_DIR']
    return os.getcwd()


def _write_text(text, path_or_buf):
    if hasattr(path_or_buf, 'write'):
        path_or_buf.write(text)
    else:
        with open(path_or_buf, 'w', encoding='utf-8', newline='') as f:
            f.write(text)


def write_csv(frame, path_or_buf, header_lines=()):
    """Write a DataFrame as CSV preceded by '#' comment lines.

    Floats are written with 17 significant digits, so identical frames give
    byte-identical files.

    Parameters
    ----------
    frame : pandas.DataFrame
        Data to write; its column order is kept.
    path_or_buf : str or file-like
        Destination.
    header_lines : iterable of str
        Comment lines written before the column header.

    """
    buf = io.StringIO()
    for line in header_lines:
        buf.write('# {}\n'.format(line))
    buf.write(frame.to_csv(index=False, float_format=FLOAT_FORMAT,
                           lineterminator='\n'))
    _write_text(buf.getvalue(), path_or_buf)


def _json_value(value):
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else None
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return None
    return value


def write_json(frame, path_or_buf, config=None):
    """Write a DataFrame as a JSON document with sorted keys.

    The document has the keys "config", "columns" and "rows"; non-finite
    floats become null.

    Parameters
    ----------
    frame : pandas.DataFrame
        Data to write.
    path_or_buf : str or file-like
        Destination.
    config : dict, optional
        Configuration stored alongside the data.

    """
    rows = [[_json_value(v) for v in row]
            for row in frame.astype(object).itertuples(index=False)]
    document = {'config': config or {}, 'columns': list(frame.columns),
                'rows': rows}
    _write_text(json.dumps(document, sort_keys=True, indent=1) + '\n',
                path_or_buf)


class Dataset(object):
    """Tabular result of a sweep or preset, with its provenance."""

    def __init__(self, name, frame, config=None, pinned=None, notes=None):
        """Initialisation.

        Parameters
        ----------
        name : str
            Dataset name, used as file name.
        frame : pandas.DataFrame
            The data.
        config : dict, optional
            Configuration that produced the data.
        pinned : dict, optional
            Solver settings fixed by the producer (truncation, tolerances).
        notes : list of str, optional
            Extra header lines, e.g. the drive values chosen by a preset.

        """
        self.name = name
        self.frame = frame
        self.config = dict(config or {})
        self.pinned = dict(pinned or {})
        self.notes = list(notes or [])

    @property
    def n_failures(self):
        if 'error' not in self.frame.columns:
            return 0
        return int(self.frame['error'].fillna('').astype(bool).sum())

    def header_config(self):
        return {k: v for k, v in self.config.items()
                if k not in NON_NUMERIC_KEYS}

    def header_lines(self):
        """Comment lines describing the dataset."""
        lines = ['pyvdp {}'.format(pyvdp.__version__),
                 'dataset: {}'.format(self.name),
                 'config: {}'.format(json.dumps(self.header_config(),
                                                sort_keys=True))]
        if self.pinned:
            lines.append('pinned: {}'.format(json.dumps(self.pinned,
                                                        sort_keys=True)))
        lines.extend(self.notes)
        return lines

    def write(self, out_dir=None, fmt='csv'):
        """Write the dataset to ``<out_dir>/<name>.<fmt>``.

        Parameters
        ----------
        out_dir : str, optional
            Output directory, see `get_output_dir`.
        fmt : str
            'csv' or 'json'.

        Returns
        -------
        str
            Path of the written file.

        """
        out_dir = get_output_dir(out_dir)
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, '{}.{}'.format(self.name, fmt))
        if fmt == 'csv':
            write_csv(self.frame, path, self.header_lines())
        elif fmt == 'json':
            config = self.header_config()
            if self.pinned:
                config = dict(config, pinned=self.pinned)
            if self.notes:
                config = dict(config, notes=self.notes)
            write_json(self.frame, path, config)
        else:
            raise ValueError("Unknown output format '{}'.".format(fmt))
        return path

    def __repr__(self):
        return 'Dataset(name={!r}, rows={})'.format(self.name,
                                                    len(self.frame))
