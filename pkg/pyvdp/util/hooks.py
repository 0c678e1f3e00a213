# -*- coding: utf-8 -*-
"""Module implementing a simple hooks system to allow late-binding actions to
pyvdp events."""

import sys
import time
from multiprocessing import Lock

import pyvdp


class Hooks(list):
    """Runtime representation of registered pyvdp hooks, i.e. a list of
    instances of AbstractReadHook."""

    def get_read_hooks(self):
        """Get the registered read hooks (i.e. hooks that are subclasses of
        AbstractReadHook), in the order they are defined in the list.

        Returns
        -------
        generator of AbstractReadHook
            The registered read hooks.

        """
        return (h for h in self if isinstance(h, AbstractReadHook))


class HookRunner(object):
    """Class for executing registered hooks."""
    @staticmethod
    def __execute_read(hook_name, args):
        """Execute the read hook with the given name for all registered hooks.

        Parameters
        ----------
        hook_name : str
            Name of the hook function to execute.
        args : list
            List of arguments to pass to the hook function call.

        """
        for h in pyvdp.hooks.get_read_hooks():
            getattr(h, hook_name)(*args)

    @staticmethod
    def execute_sweep_init(name, number_of_points):
        """Execute the sweep_init method for all registered hooks.

        Parameters
        ----------
        name : str
            Name of the sweep (mode or preset dataset).
        number_of_points : int
            Number of parameter points in the sweep.

        """
        HookRunner.__execute_read('sweep_init', [name, number_of_points])

    @staticmethod
    def execute_point_solved(index, row):
        """Execute the point_solved method for all registered hooks.

        Parameters
        ----------
        index : int
            Position of the point in the sweep.
        row : dict
            Column values of the dataset row for this point.

        """
        HookRunner.__execute_read('point_solved', [index, row])

    @staticmethod
    def execute_point_failed(index, error):
        """Execute the point_failed method for all registered hooks.

        Parameters
        ----------
        index : int
            Position of the point in the sweep.
        error : Exception
            The error raised while solving this point.

        """
        HookRunner.__execute_read('point_failed', [index, error])

    @staticmethod
    def execute_steady_solved(params, n_levels, residual):
        """Execute the steady_solved method for all registered hooks.

        Parameters
        ----------
        params : pyvdp.model.VdpParams
            Parameters of the solved model.
        n_levels : int
            Final Fock truncation.
        residual : float
            Infinity norm of the Liouvillian applied to the solution.

        """
        HookRunner.__execute_read('steady_solved',
                                  [params, n_levels, residual])

    @staticmethod
    def execute_truncation_grown(params, old_n, new_n, tail_mass):
        """Execute the truncation_grown method for all registered hooks.

        Parameters
        ----------
        params : pyvdp.model.VdpParams
            Parameters of the model being solved.
        old_n : int
            Truncation that was rejected.
        new_n : int
            Truncation used for the next attempt.
        tail_mass : float
            Occupation of the top two levels at `old_n`.

        """
        HookRunner.__execute_read('truncation_grown',
                                  [params, old_n, new_n, tail_mass])

    @staticmethod
    def execute_sweep_done(name, number_of_points, number_of_failures):
        """Execute the sweep_done method for all registered hooks.

        Parameters
        ----------
        name : str
            Name of the sweep.
        number_of_points : int
            Number of parameter points in the sweep.
        number_of_failures : int
            Number of points that raised an error.

        """
        HookRunner.__execute_read('sweep_done', [name, number_of_points,
                                                 number_of_failures])


class AbstractReadHook(object):
    """Abstract base class for custom hook implementations.

    This class contains all read-only hooks: i.e. hooks receiving events but
    otherwise not interfering with pyvdp's execution stack.

    Provides all available methods with a default implementation to do
    nothing. This allows for hook subclasses to only implement the events
    they need.

    Because sweeps are executed by a pool of worker threads, the point and
    solver events will be called simultaneously from multiple threads. Make
    sure your implementation is threadsafe or uses locking.

    """

    def sweep_init(self, name, number_of_points):
        """Called upon starting a sweep.

        Parameters
        ----------
        name : str
            Name of the sweep (mode or preset dataset).
        number_of_points : int
            Number of parameter points in the sweep.

        """
        pass

    def point_solved(self, index, row):
        """Called when a sweep point has been computed.

        Parameters
        ----------
        index : int
            Position of the point in the sweep.
        row : dict
            Column values of the dataset row for this point.

        """
        pass

    def point_failed(self, index, error):
        """Called when a sweep point raised an error.

        Parameters
        ----------
        index : int
            Position of the point in the sweep.
        error : Exception
            The error raised while solving this point.

        """
        pass

    def steady_solved(self, params, n_levels, residual):
        """Called when a steady state has been accepted.

        Parameters
        ----------
        params : pyvdp.model.VdpParams
            Parameters of the solved model.
        n_levels : int
            Final Fock truncation.
        residual : float
            Infinity norm of the Liouvillian applied to the solution.

        """
        pass

    def truncation_grown(self, params, old_n, new_n, tail_mass):
        """Called when the adaptive truncation is enlarged.

        Parameters
        ----------
        params : pyvdp.model.VdpParams
            Parameters of the model being solved.
        old_n : int
            Truncation that was rejected.
        new_n : int
            Truncation used for the next attempt.
        tail_mass : float
            Occupation of the top two levels at `old_n`.

        """
        pass

    def sweep_done(self, name, number_of_points, number_of_failures):
        """Called after all points of a sweep have been processed.

        Parameters
        ----------
        name : str
            Name of the sweep.
        number_of_points : int
            Number of parameter points in the sweep.
        number_of_failures : int
            Number of points that raised an error.

        """
        pass


class SimpleStatusHook(AbstractReadHook):
    """Simple hook implementation to print progress to stdout."""

    def __init__(self, stream=None):
        """Initialisation.

        Initialise all variables to 0.

        Parameters
        ----------
        stream : file-like, optional
            Stream to write progress to. Defaults to sys.stdout.

        """
        self.stream = stream
        self.result_count = 0
        self.prog_counter = 0
        self.init_time = None
        self.previous_remaining = None
        self.lock = Lock()

    def _out(self):
        return self.stream if self.stream is not None else sys.stdout

    def _write_progress(self, char):
        """Write progress to the output stream.

        Progress is grouped on lines per 50 items, adding ``char`` for every
        item processed.

        Parameters
        ----------
        char : str
            Single character to print.

        """
        out = self._out()
        if self.prog_counter == 0:
            out.write('[{:03d}/{:03d}] '.format(
                self.prog_counter, self.result_count))
            out.flush()
        elif self.prog_counter % 50 == 0:
            time_elapsed = time.time() - self.init_time
            time_per_item = time_elapsed / self.prog_counter
            remaining_mins = int((time_per_item * (
                self.result_count - self.prog_counter)) / 60)
            if remaining_mins > 1 and remaining_mins != \
                    self.previous_remaining:
                remaining = " ({:d} min. left)".format(remaining_mins)
                self.previous_remaining = remaining_mins
            else:
                remaining = ""
            out.write('{}\n[{:03d}/{:03d}] '.format(
                remaining, self.prog_counter, self.result_count))
            out.flush()

        out.write(char)
        out.flush()
        self.prog_counter += 1

        if self.prog_counter == self.result_count:
            out.write('\n')
            out.flush()

    def sweep_init(self, name, number_of_points):
        """When a new sweep is started, reset all counters.

        Parameters
        ----------
        name : str
            Name of the sweep.
        number_of_points : int
            Number of parameter points in the sweep.

        """
        with self.lock:
            self.result_count = number_of_points
            self.prog_counter = 0
            self.init_time = time.time()
            self.previous_remaining = None

    def point_solved(self, index, row):
        """When a point is solved, print '.' to the progress output.

        Parameters
        ----------
        index : int
            Position of the point in the sweep.
        row : dict
            Column values of the dataset row for this point.

        """
        with self.lock:
            self._write_progress('.')

    def point_failed(self, index, error):
        """When a point fails, print 'E' to the progress output.

        Parameters
        ----------
        index : int
            Position of the point in the sweep.
        error : Exception
            The error raised while solving this point.

        """
        with self.lock:
            self._write_progress('E')
