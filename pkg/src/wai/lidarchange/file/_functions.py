import os


def ensure_directory(filename: str):
    """
    Makes sure the directory that will contain 'filename' exists.

    :param filename:    The file about to be written.
    """
    directory = os.path.dirname(filename)
    if directory != "" and not os.path.exists(directory):
        os.makedirs(directory, exist_ok=True)
